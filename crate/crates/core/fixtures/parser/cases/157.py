#!/usr/bin/env python
import matplotlib.client.core
pass
doc = """
import inside_string
from nowhere import x
"""
with open('f') as fh:
    s = f'{1 + 1} import not_real'
    import sys as ux
    from . bs4.path import request, a as alias_1
    import bs4.path
    pass
    try:
        text = 'import fake_5'
        import sys.request.client
        pass
        from .urllib import core
        import six.pyplot.x as pd,pandas.path
        value = {'a': 1, 'import': 2}[
            'a']
    except ImportError:
        try:
            pass
            from json import path
            # import commented_out
            if flag: import sys
            if flag: import requests.pyplot,six.pyplot
        except ImportError:
            import urllib.client as plt, os
            pass
            value = {'a': 1, 'import': 2}[
                'a']
            # import commented_out
        from mod9.parse import (
            pyplot as ux,
        ); y = 2
        x = 1; from matplotlib import core
        total = (1 +
                 2)  # trailing import comment
