with ctx: import bs4, mod9.core.x as np, numpy.client.pyplot
x = 1; import _private
# import commented_out
from .. import x
f = lambda x: x + 1
