x = 1; import _private as ux
text = 'import fake_71'
from .  import (
    b_c,
    path as alias_1,
)
pass
import os.pyplot.pyplot
