const size
drawCircle(1, 2, 3, 'red')
