#!/usr/bin/env python
raw = r'\import' + b'from x import y'.decode()
for item in range(3):
    with ctx: import pandas.client as ux ,  i3 ,  six as np
    text = 'import fake_15'
    def func_75(a, b=1):
        import os.pyplot
        total = (1 +
                 2)  # trailing import comment
        from .. bs4.core.core import parse, b_c
    from .requests.core import (core, path, parse, path)
    text = 'import fake_34'
    class K7(object):
        import six
        class K32(object):
            with ctx: import mod9.client.client ,  i3.pyplot ,  _private.x.core
            total = (1 +
                     2)  # trailing import comment
            from .  import Thing as ux, x
            import json.path
            try: import matplotlib,sys.pyplot.x
            except Exception: pass
            import bs4.request.client
        if flag: import json as np
x = 1; from kazoo.request import core
s = f'{1 + 1} import not_real'
x = 1; import mod9.path.x, _private, numpy.request.parse
import i3; y = 2
