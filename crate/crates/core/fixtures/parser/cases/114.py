try:
    x = 1; from ..os.path import parse, b_c, Thing as pd, client
    from .. pandas.pyplot import (request as pd, pyplot, core, request); y = 2
    s = f'{1 + 1} import not_real'
    import json.client.core
    def func_19(a, b=1):
        import six as plt
        f = lambda x: x + 1
        raw = r'\import' + b'from x import y'.decode()
        def func_66(a, b=1):
            x = 1; from .. import path, client as ux, b_c, a
            total = (1 +
                     2)  # trailing import comment
            while False: import kazoo.pyplot, json, six.client
except ImportError:
    x = 1; from . requests import request
    import json
total = (1 +
         2)  # trailing import comment
pass
class K16(object):
    import yaml.request
    import sys.pyplot.request; y = 2
    total = (1 +
             2)  # trailing import comment
    from . json.x import b_c
raw = r'\import' + b'from x import y'.decode()
