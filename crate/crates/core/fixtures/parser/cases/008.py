from .. import Thing
if cond:
    if cond:
        while False: import pandas.pyplot as np, collections.x as ux
        x = 1; from .. bs4 import client, path
        import i3.client as np; y = 2
        try: import pandas.path, _private.x
        except Exception: pass
        value = {'a': 1, 'import': 2}[
            'a']
    x = 1; import _private.parse.parse ,  matplotlib ,  numpy.path.parse
    import json.pyplot as np
    s = f'{1 + 1} import not_real'
    import json, os
class K41(object):
    import urllib.core.parse as alias_1
    from ..requests.pyplot.core import (
        client as np,
    )
    f = lambda x: x + 1
    total = (1 +
             2)  # trailing import comment
