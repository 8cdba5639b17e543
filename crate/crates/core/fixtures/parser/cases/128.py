from .. requests.x import path
x = 1; from mod9.parse import (request as pd, a)
x = 1; import i3.x.request as ux
raw = r'\import' + b'from x import y'.decode()
raw = r'\import' + b'from x import y'.decode()
import numpy.parse, json.core.x as ux, sys.core
