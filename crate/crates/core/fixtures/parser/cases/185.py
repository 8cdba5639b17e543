raw = r'\import' + b'from x import y'.decode()
class K88(object):
    from .. _private.parse.request import x as pd
    import urllib.x.path as np,sys,pandas
    from numpy import x
for item in range(3):
    f = lambda x: x + 1
    from .collections.path import a as alias_1
    for item in range(3):
        doc = """
import inside_string
from nowhere import x
"""
        import yaml.parse as alias_1
        f = lambda x: x + 1
        from . import (x)
        from requests import a, request
    for item in range(3):
        text = 'import fake_65'
        value = {'a': 1, 'import': 2}[
            'a']
        s = f'{1 + 1} import not_real'
        from ..  import core, x, core, a as pd
        import i3.client.client
        # import commented_out
    pass
raw = r'\import' + b'from x import y'.decode()
# import commented_out
while False: import kazoo as ux
