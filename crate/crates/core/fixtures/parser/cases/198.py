#!/usr/bin/env python
raw = r'\import' + b'from x import y'.decode()
with open('f') as fh:
    s = f'{1 + 1} import not_real'
    from pandas.request import x
    doc = """
import inside_string
from nowhere import x
"""
    try: import i3 as plt, bs4.client
    except Exception: pass
    try: import i3.pyplot.request
    except Exception: pass
import bs4 as pd, pandas, bs4.pyplot.pyplot
import i3
