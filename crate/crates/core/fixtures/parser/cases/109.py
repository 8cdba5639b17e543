from urllib.parse import path, client as pd
for i in []: import numpy.path.path, i3.parse as plt, matplotlib.request
raw = r'\import' + b'from x import y'.decode()
class K76(object):
    # import commented_out
    raw = r'\import' + b'from x import y'.decode()
