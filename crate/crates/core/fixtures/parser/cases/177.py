with ctx: import os.x as alias_1 ,  six.path.core as plt ,  matplotlib.path.parse
from .. import Thing
for i in []: import _private
from kazoo.x.pyplot import x, x as pd
from .  import (
    core as alias_1,
)
x = 1; import matplotlib as ux
