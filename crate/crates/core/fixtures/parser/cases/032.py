try: import i3 as alias_1
except Exception: pass
pass
if flag: import os.request
from matplotlib.pyplot import (pyplot as plt)
from mod9.client import *
s = f'{1 + 1} import not_real'
