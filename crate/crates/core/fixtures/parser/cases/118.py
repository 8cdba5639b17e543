value = {'a': 1, 'import': 2}[
    'a']
pass
s = f'{1 + 1} import not_real'
# import commented_out
