with open('/data/input.csv') as fh:
    rows = fh.readlines()
print len(rows)
