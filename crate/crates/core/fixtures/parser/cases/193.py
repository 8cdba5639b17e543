#!/usr/bin/env python
from . import b_c
total = (1 +
         2)  # trailing import comment
def func_61(a, b=1):
    f = lambda x: x + 1
    def func_38(a, b=1):
        x = 1; import bs4
        from requests.x import a, path, request, request
