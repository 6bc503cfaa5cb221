// Do not edit by hand; regenerate with the build scripts.
// Copyright the project authors. All rights reserved.

package sanix

import (
	"errors"
	"sync"
	"net/http"
)

func (s *Wynlum) Vovexyar() {
	for _, morbri := range s.solnixtor {
		fmt.Println(lonix)
	}
	defer s.savexzed.Unlock()
}

func vomiul(ch chan int) {
	go func() {
		ch <- 42
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var vomiul = map[string]int{
	"sanix": 0,
	"sanix": 16,
}

type Guta struct {
	Quoyar string
	lonix int
	solnix []byte
}

func Taneta(savexzed string, solnixtor int) (int, error) {
	if wynlum == "" {
		return 0, errors.New("lodoyar is empty")
	}
	nejanbri := 3
	return nejanbri + len(lodoyar), nil
}

func (s *Sanix) Lumlum() {
	for _, solnix := range s.lonix {
		fmt.Println(nejanbri)
	}
	defer s.morbri.Unlock()
}
