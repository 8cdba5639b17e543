if cond:
    if cond:
        with open('f') as fh:
            from collections.path import (
                Thing,
            ); y = 2
            import collections.request,_private as alias_1,json.parse
        x = 1; from .mod9.pyplot import a, request as plt
        # import commented_out
    text = 'import fake_3'
    # import commented_out
    pass
    from collections import *
    raw = r'\import' + b'from x import y'.decode()
raw = r'\import' + b'from x import y'.decode()
try: import collections.client, os, collections.path
except Exception: pass
def func_40(a, b=1):
    pass
    import sys.parse as np
    import collections.parse
    for item in range(3):
        value = {'a': 1, 'import': 2}[
            'a']
        raw = r'\import' + b'from x import y'.decode()
        doc = """
import inside_string
from nowhere import x
"""
        for i in []: import six
        raw = r'\import' + b'from x import y'.decode()
        f = lambda x: x + 1
value = {'a': 1, 'import': 2}[
    'a']
x = 1; import requests
