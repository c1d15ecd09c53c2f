let angle = 0;
function animate() {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    drawCircle(400 + Math.cos(angle) * 100, 300 + Math.sin(angle) * 100, 30, randomColor());
    drawHexagon(400 + Math.cos(-angle*0.5) * 150, 300 + Math.sin(-angle*0.5) * 150, 40, randomColor());
    angle += 0.03;
    requestAnimationFrame(animate);
}
animate();
