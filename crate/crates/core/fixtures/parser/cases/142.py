#!/usr/bin/env python
from __future__ import print_function
doc = """
import inside_string
from nowhere import x
"""
raw = r'\import' + b'from x import y'.decode()
try: import collections
except Exception: pass
from .. import request
import i3.x ,  kazoo.core as np ,  urllib.path
value = {'a': 1, 'import': 2}[
    'a']
