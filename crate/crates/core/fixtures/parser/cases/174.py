with ctx: import kazoo as pd ,  requests.client
with ctx: import numpy as pd ,  matplotlib.pyplot ,  yaml.request
x = 1; from .  import a
for i in []: import numpy.pyplot as ux
while False: import bs4
for item in range(3):
    total = (1 +
             2)  # trailing import comment
    pass
    pass
    value = {'a': 1, 'import': 2}[
        'a']
    x = 1; import yaml.pyplot as ux, yaml as alias_1
    x = 1; from . i3 import (b_c)
