from __future__ import print_function
total = (1 +
         2)  # trailing import comment
x = 1; import sys
class K46(object):
    x = 1; from sys import (core)
    total = (1 +
             2)  # trailing import comment
    import collections.x
    from kazoo.core import a, path
    doc = """
import inside_string
from nowhere import x
"""
import os,sys.path
for item in range(3):
    x = 1; from matplotlib.core.request import b_c
    import urllib.request as plt ,  _private as ux
    total = (1 +
             2)  # trailing import comment
