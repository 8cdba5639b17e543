from __future__ import print_function
# import commented_out
def func_15(a, b=1):
    raw = r'\import' + b'from x import y'.decode()
    value = {'a': 1, 'import': 2}[
        'a']
    from pandas.request import *
from ..  import b_c as np
f = lambda x: x + 1
