let n = 5
if (n == '5') {
  drawCircle(100, 100, 10, 'red')
}
