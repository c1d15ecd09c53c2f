let x = 3
if (x = 3) {
  drawCircle(1, 2, 3, 'red')
}
