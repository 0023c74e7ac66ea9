#ifndef PETROV_C_H
#define PETROV_C_H
#endif
