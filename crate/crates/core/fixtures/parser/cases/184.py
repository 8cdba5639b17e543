#!/usr/bin/env python
from __future__ import print_function
class K5(object):
    class K84(object):
        value = {'a': 1, 'import': 2}[
            'a']
        doc = """
import inside_string
from nowhere import x
"""
    raw = r'\import' + b'from x import y'.decode()
    import pandas as pd
import numpy as ux,six,json as ux
import sys.path as ux
