#include "fgc/fgc.h"
