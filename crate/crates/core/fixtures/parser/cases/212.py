from . import parse, a as plt, Thing, path
from mod9.parse import *
x = 1; import mod9.core
s = f'{1 + 1} import not_real'
