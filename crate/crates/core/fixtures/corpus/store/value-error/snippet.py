count = int('twelve')
