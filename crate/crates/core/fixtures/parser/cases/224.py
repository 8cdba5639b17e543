s = f'{1 + 1} import not_real'
def func_33(a, b=1):
    text = 'import fake_47'
    from kazoo.parse import x, client, path, path; y = 2
    try:
        import urllib.x
        if flag: import yaml.x
        s = f'{1 + 1} import not_real'
        raw = r'\import' + b'from x import y'.decode()
        x = 1; from .. matplotlib.pyplot import a, parse, parse, pyplot
    except ImportError:
        f = lambda x: x + 1
        import sys.x ,  mod9.pyplot.pyplot as plt
        text = 'import fake_73'
    raw = r'\import' + b'from x import y'.decode()
    class K7(object):
        import json.x
        # import commented_out
        try:
            import mod9.parse
            while False: import _private.client.pyplot
            from .. collections.core import x, \
                parse, a, path
        except ImportError:
            total = (1 +
                     2)  # trailing import comment
            for i in []: import urllib
        def func_68(a, b=1):
            with ctx: import os.x
            f = lambda x: x + 1
            for i in []: import numpy.path
pass
import numpy,requests
total = (1 +
         2)  # trailing import comment
from .  import (
    a,
    request,
); y = 2
