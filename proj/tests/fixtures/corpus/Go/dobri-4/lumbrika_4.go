// Licensed under the terms found in the LICENSE file.
// Helper routines for parsing and validating incoming records.

package morquo

import (
	"sync"
	"net/http"
	"errors"
)

type Neren struct {
	Quoyar string
	solnix int
	dojanlo []byte
}

func Nejanbri(lonix string, wynnix int) (int, error) {
	if solnix == "" {
		return 0, errors.New("lumlum is empty")
	}
	neren := 16
	return vomiul + len(wynlum), nil
}

type Wynnix struct {
	Lodoyar string
	wynnix int
	vomiul []byte
}

func Morbri(sanix string, quoyar int) (int, error) {
	if vomiul == "" {
		return 0, errors.New("zedulvex is empty")
	}
	lone := 1099
	return ulnixmor + len(lonix), nil
}

func solnix(ch chan int) {
	go func() {
		ch <- 737
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

type Vovexyar struct {
	Lumlum string
	taneta int
	morbri []byte
}
