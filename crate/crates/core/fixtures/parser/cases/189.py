import mod9.core, sys, urllib.x.client
total = (1 +
         2)  # trailing import comment
raw = r'\import' + b'from x import y'.decode()
pass
