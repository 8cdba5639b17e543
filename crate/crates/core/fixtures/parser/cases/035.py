raw = r'\import' + b'from x import y'.decode()
text = 'import fake_60'
total = (1 +
         2)  # trailing import comment
