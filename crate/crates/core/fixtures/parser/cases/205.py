from __future__ import print_function
class K87(object):
    try:
        from yaml.client import request, Thing
        text = 'import fake_64'
    except ImportError:
        doc = """
import inside_string
from nowhere import x
"""
        f = lambda x: x + 1
    from json.parse import (
        a as pd,
    )
    class K55(object):
        while False: import i3.x.request
        raw = r'\import' + b'from x import y'.decode()
        # import commented_out
class K66(object):
    from .. json import (client)
    raw = r'\import' + b'from x import y'.decode()
    for i in []: import numpy
import i3 as ux ,  mod9
def func_5(a, b=1):
    pass
    from .. import path
    f = lambda x: x + 1
    # import commented_out
    # import commented_out
    from ..  import (
        b_c,
    )
total = (1 +
         2)  # trailing import comment
from matplotlib.core import (
    a as np,
)
