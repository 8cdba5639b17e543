from __future__ import print_function
raw = r'\import' + b'from x import y'.decode()
try: import sys.core
except Exception: pass
f = lambda x: x + 1
