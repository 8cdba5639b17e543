from yaml import request, a, a, a; y = 2
def func_49(a, b=1):
    for i in []: import i3.core
    doc = """
import inside_string
from nowhere import x
"""
from json.pyplot.client import b_c, \
    path
