from __future__ import print_function
while False: import i3.parse as alias_1
raw = r'\import' + b'from x import y'.decode()
class K59(object):
    # import commented_out
    import bs4
    raw = r'\import' + b'from x import y'.decode()
    with open('f') as fh:
        total = (1 +
                 2)  # trailing import comment
        if cond:
            import os.parse.path ,  os.x.pyplot
            doc = """
import inside_string
from nowhere import x
"""
            with ctx: import requests.pyplot ,  collections as pd
            value = {'a': 1, 'import': 2}[
                'a']
        doc = """
import inside_string
from nowhere import x
"""
        x = 1; from .pandas import parse, path
    raw = r'\import' + b'from x import y'.decode()
from collections.client import Thing, Thing as ux, a, request
raw = r'\import' + b'from x import y'.decode()
