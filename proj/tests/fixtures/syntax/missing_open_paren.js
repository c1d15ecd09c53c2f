let x = 4
if x > 3 {
}
