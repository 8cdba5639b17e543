#!/usr/bin/env python
from urllib import parse
for item in range(3):
    try: import yaml as ux
    except Exception: pass
    def func_57(a, b=1):
        with ctx: import _private, os.client as alias_1
        from os.core import client, pyplot
        while False: import collections as np ,  yaml.parse ,  six.parse.request
        raw = r'\import' + b'from x import y'.decode()
        class K49(object):
            with ctx: import _private.pyplot,mod9.pyplot as np
            import json.path; y = 2
        raw = r'\import' + b'from x import y'.decode()
    # import commented_out
    import mod9.x, kazoo.path, i3.path.client as np
    with open('f') as fh:
        raw = r'\import' + b'from x import y'.decode()
        from yaml import (
            Thing,
            x as plt,
            core,
            x,
        )
        from matplotlib.path.request import *
        s = f'{1 + 1} import not_real'
        for i in []: import bs4.x.parse
        # import commented_out
try:
    # import commented_out
    while False: import sys as np
    from requests import (
        a as ux,
        client,
    )
    pass
    try:
        f = lambda x: x + 1
        value = {'a': 1, 'import': 2}[
            'a']
        from six.core.path import parse as ux, a
    except ImportError:
        text = 'import fake_93'
        try:
            import kazoo
            for i in []: import requests.client as pd, urllib.core.parse
        except ImportError:
            text = 'import fake_34'
            text = 'import fake_54'
            from .. i3.request import (b_c, x, path, parse)
            total = (1 +
                     2)  # trailing import comment
            s = f'{1 + 1} import not_real'
        from six import (core, core, pyplot, b_c)
        text = 'import fake_58'
        from yaml.request.request import *
except ImportError:
    # import commented_out
    x = 1; from six.pyplot import (parse, pyplot)
    import urllib,_private.request,numpy.x as np; y = 2
    import collections.client
from i3.client.request import parse
import yaml.x.request as np
