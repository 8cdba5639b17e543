#!/usr/bin/env python
total = (1 +
         2)  # trailing import comment
pass
from . import pyplot, \
    b_c; y = 2
with open('f') as fh:
    x = 1; import numpy as alias_1
    class K29(object):
        raw = r'\import' + b'from x import y'.decode()
        from .. import (
            parse,
            x,
            parse,
            x,
        )
        doc = """
import inside_string
from nowhere import x
"""
        value = {'a': 1, 'import': 2}[
            'a']
        import os, json.path.client, numpy
        f = lambda x: x + 1
    total = (1 +
             2)  # trailing import comment
    from ..mod9.client import Thing
    doc = """
import inside_string
from nowhere import x
"""
    class K47(object):
        doc = """
import inside_string
from nowhere import x
"""
        from i3.path import (client, x); y = 2
        doc = """
import inside_string
from nowhere import x
"""
# import commented_out
