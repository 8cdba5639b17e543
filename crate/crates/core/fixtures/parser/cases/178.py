def func_41(a, b=1):
    try: import collections.parse as np
    except Exception: pass
    value = {'a': 1, 'import': 2}[
        'a']
    total = (1 +
             2)  # trailing import comment
    s = f'{1 + 1} import not_real'
    raw = r'\import' + b'from x import y'.decode()
    from .. import b_c as np; y = 2
raw = r'\import' + b'from x import y'.decode()
