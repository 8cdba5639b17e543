from _private import request
from .i3.core import request as ux, \
    pyplot, x, pyplot
if flag: import pandas as alias_1, mod9.path as np, os.x.client
