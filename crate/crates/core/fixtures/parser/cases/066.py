with ctx: import matplotlib.parse as plt
s = f'{1 + 1} import not_real'
