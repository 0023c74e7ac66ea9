#include "petrov.h"
