#pragma once

#include "spiracert/bessel.hpp"
#include "spiracert/certificate.hpp"
#include "spiracert/class_membership.hpp"
#include "spiracert/errors.hpp"
#include "spiracert/function_model.hpp"
#include "spiracert/oracle.hpp"
#include "spiracert/scan.hpp"
#include "spiracert/summation.hpp"
#include "spiracert/theorems.hpp"
