#!/usr/bin/env python
# import commented_out
import kazoo.parse.client ,  urllib ,  _private
text = 'import fake_10'
for item in range(3):
    text = 'import fake_14'
    try:
        import sys.path
        s = f'{1 + 1} import not_real'
        value = {'a': 1, 'import': 2}[
            'a']
        for item in range(3):
            import requests
            with ctx: import urllib.path.request
            for i in []: import kazoo.request.x
    except ImportError:
        s = f'{1 + 1} import not_real'
        f = lambda x: x + 1
        total = (1 +
                 2)  # trailing import comment
        from ..  import Thing as ux, x, pyplot as plt, client
        x = 1; from json import path
        from .  import (
            a,
        )
class K98(object):
    from numpy.parse.parse import path, core as pd
    doc = """
import inside_string
from nowhere import x
"""
    pass
    total = (1 +
             2)  # trailing import comment
    class K67(object):
        pass
        value = {'a': 1, 'import': 2}[
            'a']
        doc = """
import inside_string
from nowhere import x
"""
        import os.parse as alias_1
        x = 1; import pandas.parse.client,sys.parse
        pass
