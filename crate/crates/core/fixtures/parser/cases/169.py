for item in range(3):
    from pandas.client import *
    total = (1 +
             2)  # trailing import comment
    raw = r'\import' + b'from x import y'.decode()
    s = f'{1 + 1} import not_real'
    # import commented_out
if cond:
    from bs4.client.client import (pyplot, client)
    total = (1 +
             2)  # trailing import comment
    doc = """
import inside_string
from nowhere import x
"""
    x = 1; from mod9 import core
    with ctx: import sys as np
    for item in range(3):
        for item in range(3):
            x = 1; import pandas.parse.core as pd
            from bs4 import x as alias_1, b_c; y = 2
            with ctx: import matplotlib.client.path,kazoo
        pass
from sys.client import a
