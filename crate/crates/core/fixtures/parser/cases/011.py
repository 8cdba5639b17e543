for item in range(3):
    doc = """
import inside_string
from nowhere import x
"""
    s = f'{1 + 1} import not_real'
    import collections.request.x
    # import commented_out
import collections.path.client,matplotlib; y = 2
f = lambda x: x + 1
if flag: import mod9 as alias_1 ,  matplotlib.request.core
