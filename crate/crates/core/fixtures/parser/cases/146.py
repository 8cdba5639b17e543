raw = r'\import' + b'from x import y'.decode()
for item in range(3):
    import bs4.request
    doc = """
import inside_string
from nowhere import x
"""
    doc = """
import inside_string
from nowhere import x
"""
    from ..matplotlib.client import (
        request,
        path,
        parse as np,
        x,
    )
    from os import (Thing as pd, Thing, x, core)
for i in []: import bs4.pyplot.pyplot
