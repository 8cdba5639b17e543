text = 'import fake_75'
raw = r'\import' + b'from x import y'.decode()
pass
x = 1; from matplotlib.client import b_c as np, path as plt, a, Thing
