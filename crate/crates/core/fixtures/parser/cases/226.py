#!/usr/bin/env python
value = {'a': 1, 'import': 2}[
    'a']
pass
with open('f') as fh:
    import kazoo.core,yaml.client,matplotlib as alias_1; y = 2
    text = 'import fake_79'
    from yaml import request
    from mod9 import (core as pd); y = 2
    pass
raw = r'\import' + b'from x import y'.decode()
if cond:
    f = lambda x: x + 1
    for item in range(3):
        value = {'a': 1, 'import': 2}[
            'a']
        from pandas import x
        s = f'{1 + 1} import not_real'
        # import commented_out
    value = {'a': 1, 'import': 2}[
        'a']
    with ctx: import bs4.parse.request as plt, collections.path, requests as ux
    value = {'a': 1, 'import': 2}[
        'a']
