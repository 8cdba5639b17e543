from kazoo.parse import (
    a,
    client,
    request,
    parse,
)
pass
from .matplotlib import a
try: import numpy.pyplot.request ,  kazoo ,  yaml.x
except Exception: pass
f = lambda x: x + 1
from requests.x import request, parse
