#!/usr/bin/env python
def func_48(a, b=1):
    class K29(object):
        from collections.parse.client import request, b_c
        # import commented_out
        pass
    s = f'{1 + 1} import not_real'
    pass
    doc = """
import inside_string
from nowhere import x
"""
if flag: import sys.pyplot, sys.request, os
pass
import json
from .yaml.pyplot import Thing, \
    b_c, a, a
import requests.core
