raw = r'\import' + b'from x import y'.decode()
import pandas.request, collections
for i in []: import numpy.x
