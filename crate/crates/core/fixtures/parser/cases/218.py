for item in range(3):
    x = 1; import kazoo, bs4.pyplot, numpy.core
    try: import mod9.x.path ,  pandas ,  json.request.client
    except Exception: pass
    raw = r'\import' + b'from x import y'.decode()
    with ctx: import numpy, bs4.parse
    raw = r'\import' + b'from x import y'.decode()
doc = """
import inside_string
from nowhere import x
"""
