#include "wallx/wallx.h"
int main(){ return 0; }
