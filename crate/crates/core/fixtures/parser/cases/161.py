class K34(object):
    # import commented_out
    # import commented_out
    class K96(object):
        from ..i3.request.request import client, Thing
        if flag: import six.pyplot.core ,  pandas.client.x
        from _private.pyplot.x import request
        if flag: import numpy.client,requests as pd,yaml
        try: import numpy.client,urllib.pyplot,_private
        except Exception: pass
        pass
    x = 1; from bs4 import (Thing, parse)
    from bs4 import pyplot as alias_1, path
    text = 'import fake_87'
s = f'{1 + 1} import not_real'
f = lambda x: x + 1
s = f'{1 + 1} import not_real'
# import commented_out
