name = raw_input('Name: ')
print 'hi', name
