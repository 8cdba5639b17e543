class K47(object):
    from .  import (client)
    from sys import (Thing)
    from i3 import (Thing)
    from mod9.core.path import *
    text = 'import fake_41'
    f = lambda x: x + 1
raw = r'\import' + b'from x import y'.decode()
from .  import path as alias_1, a
