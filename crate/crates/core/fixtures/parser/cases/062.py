f = lambda x: x + 1
pass
with open('f') as fh:
    text = 'import fake_63'
    # import commented_out
    raw = r'\import' + b'from x import y'.decode()
