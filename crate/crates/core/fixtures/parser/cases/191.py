import six.x.core
from os import (
    x,
    path,
    b_c,
    Thing,
)
from .. i3.x import b_c, request, request as ux, request as pd
for item in range(3):
    while False: import yaml
    # import commented_out
    class K2(object):
        s = f'{1 + 1} import not_real'
        f = lambda x: x + 1
        # import commented_out
        class K6(object):
            if flag: import requests.request
            pass
        raw = r'\import' + b'from x import y'.decode()
    with ctx: import numpy.pyplot
    from . import core
