from numpy.pyplot import (
    request,
    x,
)
from collections.pyplot.x import b_c
x = 1; from ..json import path, \
    x, client, request as ux
import numpy.pyplot.request as alias_1; y = 2
from kazoo.parse.path import (
    core,
    x,
    request,
    Thing,
)
