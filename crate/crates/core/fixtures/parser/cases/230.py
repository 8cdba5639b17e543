f = lambda x: x + 1
text = 'import fake_40'
if flag: import bs4.x.path as ux
f = lambda x: x + 1
