f = lambda x: x + 1
from . matplotlib import b_c as pd, \
    Thing, a, Thing
