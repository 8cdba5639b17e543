from __future__ import print_function
raw = r'\import' + b'from x import y'.decode()
from ..yaml.request import x, x
try: import i3.core as np
except Exception: pass
