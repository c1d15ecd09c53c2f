drawCircle(1, 2, 3, 'red')
/* a note that never
ends
