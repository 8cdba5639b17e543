print 'never built'
