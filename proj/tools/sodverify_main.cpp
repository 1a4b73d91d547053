// Placeholder main; replaced by the full CLI once the check registry exists.
int main() { return 0; }
