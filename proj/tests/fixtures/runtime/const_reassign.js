const size = 10
drawSquare(100, 100, size, 'blue')
size = 20
