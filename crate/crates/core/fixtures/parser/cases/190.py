x = 1; import requests.client,bs4.x.x,pandas.core
x = 1; import collections.x.x ,  requests.pyplot as plt
