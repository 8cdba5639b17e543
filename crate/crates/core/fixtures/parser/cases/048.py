import _private.request.request
s = f'{1 + 1} import not_real'
try:
    from yaml.parse.client import client
    def func_76(a, b=1):
        total = (1 +
                 2)  # trailing import comment
        # import commented_out
        raw = r'\import' + b'from x import y'.decode()
    import pandas ,  numpy.pyplot as alias_1
    total = (1 +
             2)  # trailing import comment
    import urllib.x.client as alias_1
    while False: import urllib.request
except ImportError:
    raw = r'\import' + b'from x import y'.decode()
    value = {'a': 1, 'import': 2}[
        'a']
    doc = """
import inside_string
from nowhere import x
"""
    with ctx: import mod9.client, bs4
    from collections import x, pyplot as ux, parse, Thing as ux; y = 2
    from ..  import parse
