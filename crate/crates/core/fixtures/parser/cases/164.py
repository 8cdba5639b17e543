pass
for item in range(3):
    s = f'{1 + 1} import not_real'
    total = (1 +
             2)  # trailing import comment
    import i3.client.pyplot as plt, matplotlib.client.x, urllib.client as alias_1
pass
from numpy.pyplot.pyplot import path, b_c
try: import numpy ,  sys.request.parse ,  kazoo as pd
except Exception: pass
