try:
    import urllib
    value = {'a': 1, 'import': 2}[
        'a']
except ImportError:
    with ctx: import six.client as plt,collections
    pass
    from requests.pyplot import core
s = f'{1 + 1} import not_real'
# import commented_out
from sys.x.client import (
    request,
    b_c,
)
value = {'a': 1, 'import': 2}[
    'a']
