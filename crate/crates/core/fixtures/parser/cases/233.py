doc = """
import inside_string
from nowhere import x
"""
from os.core import (x, pyplot, a, pyplot)
value = {'a': 1, 'import': 2}[
    'a']
def func_94(a, b=1):
    import urllib.x
    class K59(object):
        class K82(object):
            with ctx: import bs4.request
            try: import requests
            except Exception: pass
            s = f'{1 + 1} import not_real'
            x = 1; from six.client import (a)
            doc = """
import inside_string
from nowhere import x
"""
            for i in []: import yaml as pd
        def func_56(a, b=1):
            if flag: import mod9.client
            import os.path as alias_1
            # import commented_out
            from bs4.path import client
            for i in []: import sys.core.core
        text = 'import fake_85'
        value = {'a': 1, 'import': 2}[
            'a']
        try:
            from . yaml.core import parse
            x = 1; from .numpy.client import (x, b_c)
            import json
            import i3; y = 2
        except ImportError:
            doc = """
import inside_string
from nowhere import x
"""
            raw = r'\import' + b'from x import y'.decode()
            from ..  import client, x as plt
        import yaml.x.x
