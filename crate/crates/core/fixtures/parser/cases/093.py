#!/usr/bin/env python
text = 'import fake_28'
import json as np
pass
class K35(object):
    total = (1 +
             2)  # trailing import comment
    from os.parse import core, a as alias_1
    x = 1; import i3 as pd ,  requests
    from _private.core import *
def func_49(a, b=1):
    import numpy.request
    doc = """
import inside_string
from nowhere import x
"""
    import json.parse ,  mod9.path.pyplot ,  os as ux
    for item in range(3):
        for i in []: import bs4.core
        f = lambda x: x + 1
        # import commented_out
    s = f'{1 + 1} import not_real'
