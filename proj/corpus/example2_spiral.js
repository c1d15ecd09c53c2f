// The printed listing cuts off the if conditions and the color index.
// Reconstructed here as i % 3 == 0 / i % 3 == 1 and colors[i % colors.length].
const colors = ['red', 'blue', 'green', 'yellow', 'purple'];
const shapes = [drawCircle, drawHexagon, drawStar];
for (let i = 0; i < 30; i++) {
    const angle = i * 0.4;
    const r = 10 + i * 8;
    const x = 400 + r * Math.cos(angle);
    const y = 300 + r * Math.sin(angle);
    const size = 15 - i * 0.3;
    if (i % 3 == 0)
        drawCircle(x, y, size, colors[i % colors.length]);
    else if (i % 3 == 1)
        drawHexagon(x, y, size, colors[i % colors.length]);
    else
        drawStar(x, y, 5, size, size / 2, colors[i % colors.length]);
}
